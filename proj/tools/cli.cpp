#include "cli.hpp"

#include <cctype>
#include <climits>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "stdlat/cvp.hpp"
#include "stdlat/enumerate.hpp"
#include "stdlat/errors.hpp"
#include "stdlat/exactlin.hpp"
#include "stdlat/families.hpp"
#include "stdlat/norm2d.hpp"
#include "stdlat/standardness.hpp"

namespace stdlat::cli {

namespace {

using Json = nlohmann::ordered_json;

Integer parse_integer(const std::string& token) {
  Integer x;
  std::string t = token;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || x.set_str(t, 10) != 0) {
    throw InputError("not an integer: '" + token + "'");
  }
  return x;
}

Integer json_integer(const Json& v) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Integer(std::to_string(v.get<unsigned long long>()))
                                  : Integer(std::to_string(v.get<long long>()));
  }
  if (v.is_string()) return parse_integer(v.get<std::string>());
  throw InputError("basis entries must be integers, got " + v.dump());
}

BasisFile parse_json_basis(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("basis file must be a JSON object");
  if (!doc.contains("basis") || !doc["basis"].is_array()) {
    throw InputError("basis file needs a \"basis\" array of rows");
  }
  IntMatrix rows;
  for (const auto& row : doc["basis"]) {
    if (!row.is_array()) throw InputError("each basis row must be an array");
    IntVector r;
    for (const auto& x : row) r.push_back(json_integer(x));
    rows.push_back(std::move(r));
  }
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() != static_cast<long long>(rows.size())) {
      throw InputError("\"dim\" does not match the number of basis rows");
    }
  }
  BasisFile out{LatticeBasis(std::move(rows)), std::nullopt};
  if (doc.contains("norm")) {
    if (!doc["norm"].is_string()) throw InputError("\"norm\" must be a string");
    out.norm = parse_norm_kind(doc["norm"].get<std::string>());
    if (!out.norm) throw InputError("unknown norm '" + doc["norm"].get<std::string>() + "'");
  }
  return out;
}

BasisFile parse_plain_basis(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  if (!(in >> token)) throw InputError("empty basis file");
  const Integer dim = parse_integer(token);
  if (dim < 1 || dim > 1000) throw InputError("invalid dimension " + dim.get_str());
  const std::size_t n = dim.get_ui();
  IntMatrix rows(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(in >> token)) throw InputError("basis file ended early: expected " + std::to_string(n * n) + " entries");
      rows[i][j] = parse_integer(token);
    }
  }
  if (in >> token) throw InputError("unexpected trailing token '" + token + "'");
  return {LatticeBasis(std::move(rows)), std::nullopt};
}

Json json_number(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json json_number(const Rational& x) {
  if (x.get_den() == 1) return json_number(Integer(x.get_num()));
  return Json(x.get_str());
}

Json json_vector(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(json_number(x));
  return a;
}

Json json_vector(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(json_number(x));
  return a;
}

Json json_matrix(const IntMatrix& m) {
  Json a = Json::array();
  for (const auto& r : m) a.push_back(json_vector(r));
  return a;
}

Json json_values(const std::vector<NormValue>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(json_number(v.value));
  return a;
}

std::string format_vector(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string format_vector(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string lambda_label(NormKind kind) { return kind == NormKind::L2 ? "λ²" : "λ"; }

std::string norm_label(NormKind kind) {
  switch (kind) {
    case NormKind::L1:
      return "‖·‖₁";
    case NormKind::L2:
      return "‖·‖²";
    case NormKind::Linf:
      return "‖·‖∞";
  }
  return "‖·‖";
}

std::string format_values(const std::vector<NormValue>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ",";
    s += format_value(values[i]);
  }
  return s + "]";
}

void print_rows(std::ostream& out, const std::string& name, const IntMatrix& rows, NormKind kind) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << "  " << name << i + 1 << " = " << format_vector(rows[i]) << "  " << norm_label(kind)
        << " = " << format_value(measure(rows[i], kind)) << "\n";
  }
}

Json minima_json(const SuccessiveMinima& sm) {
  Json j;
  j["minima"] = json_values(sm.minima);
  j["squared"] = sm.kind == NormKind::L2;
  j["witnesses"] = json_matrix(sm.witnesses);
  return j;
}

struct Options {
  bool json = false;
  std::optional<std::string> norm;
  std::uint64_t max_candidates = EnumerationLimits{}.max_candidates;
  std::size_t max_dim = kDefaultMaxDim;
  std::string file;
  std::size_t family_n = 0;
  std::vector<std::string> point;
};

class Runner {
 public:
  Runner(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {
    limits_.max_candidates = opts.max_candidates;
  }

  int minima() {
    const BasisFile f = load();
    const NormKind kind = norm_for(f);
    const SuccessiveMinima sm = successive_minima(f.basis, kind, limits_);
    if (opts_.json) {
      Json j;
      j["command"] = "minima";
      j["dim"] = f.basis.dim();
      j["norm"] = to_string(kind);
      j.update(minima_json(sm));
      emit(j);
    } else {
      out_ << "dimension " << f.basis.dim() << ", norm " << to_string(kind) << "\n";
      out_ << lambda_label(kind) << " = " << format_values(sm.minima) << "\n";
      out_ << "witnesses:\n";
      print_rows(out_, "w", sm.witnesses, kind);
    }
    return kSuccess;
  }

  int check() {
    const BasisFile f = load();
    const NormKind kind = norm_for(f);
    const StandardnessCertificate cert = check_standard(f.basis, kind, limits_);
    const SearchStats& st = cert.search_stats;
    if (opts_.json) {
      Json j;
      j["command"] = "check";
      j["dim"] = f.basis.dim();
      j["norm"] = to_string(kind);
      j["verdict"] = to_string(cert.verdict);
      j.update(minima_json(cert.minima));
      j["basis"] = cert.basis ? json_matrix(*cert.basis) : Json(nullptr);
      j["search_stats"] = {{"candidates_per_level", st.candidates_per_level},
                           {"nodes_explored", st.nodes_explored},
                           {"pruned_by_rank", st.pruned_by_rank},
                           {"pruned_by_minors", st.pruned_by_minors}};
      emit(j);
    } else {
      out_ << "verdict: " << to_string(cert.verdict) << "\n";
      out_ << lambda_label(kind) << " = " << format_values(cert.minima.minima) << "\n";
      if (cert.basis) {
        out_ << "basis achieving the successive minima:\n";
        print_rows(out_, "b", *cert.basis, kind);
      } else {
        out_ << "no basis achieves the successive minima (exhaustive search)\n";
      }
      out_ << "search: candidates per level [";
      for (std::size_t i = 0; i < st.candidates_per_level.size(); ++i) {
        out_ << (i ? "," : "") << st.candidates_per_level[i];
      }
      out_ << "], nodes " << st.nodes_explored << ", pruned by rank " << st.pruned_by_rank
           << ", pruned by minors " << st.pruned_by_minors << "\n";
    }
    return cert.verdict == Verdict::Standard ? kSuccess : kNonStandard;
  }

  int standardize() {
    const BasisFile f = load();
    const IntMatrix rows = standardize_low_dim(f.basis, limits_);
    const Integer det = determinant(rows);
    if (opts_.json) {
      Json j;
      j["command"] = "standardize";
      j["dim"] = f.basis.dim();
      j["norm"] = "l2";
      j["basis"] = json_matrix(rows);
      std::vector<NormValue> norms;
      for (const auto& r : rows) norms.push_back(measure(r, NormKind::L2));
      j["norms"] = json_values(norms);
      j["squared"] = true;
      j["determinant"] = json_number(det);
      emit(j);
    } else {
      out_ << "standard basis (l2):\n";
      print_rows(out_, "b", rows, NormKind::L2);
      out_ << "det = " << det.get_str() << "\n";
    }
    return kSuccess;
  }

  int reduce2d() {
    const BasisFile f = load();
    const NormKind kind = norm_for(f);
    const Reduced2DBasis r = reduce_2d(f.basis, kind, limits_);
    if (opts_.json) {
      Json j;
      j["command"] = "reduce2d";
      j["dim"] = 2;
      j["norm"] = to_string(kind);
      j["basis"] = json_matrix(IntMatrix{r.b1, r.b2});
      j["norms"] = json_values({r.norm1, r.norm2});
      j["squared"] = kind == NormKind::L2;
      j["iterations"] = r.iterations;
      emit(j);
    } else {
      out_ << "norm " << to_string(kind) << "\n";
      print_rows(out_, "b", IntMatrix{r.b1, r.b2}, kind);
      out_ << lambda_label(kind) << " = " << format_values({r.norm1, r.norm2}) << "\n";
      out_ << "iterations: " << r.iterations << "\n";
    }
    return kSuccess;
  }

  int family() {
    if (opts_.family_n < 1 || opts_.family_n > opts_.max_dim) {
      throw InputError("family size must be between 1 and --max-dim (" +
                       std::to_string(opts_.max_dim) + ")");
    }
    const NormKind kind = norm_or_default(std::nullopt);
    const FamilyReport rep = verify_family(opts_.family_n, kind, limits_);
    const ParityArgument& arg = rep.parity_argument;
    if (opts_.json) {
      Json j;
      j["command"] = "family";
      j["n"] = rep.n;
      j["norm"] = to_string(kind);
      j["verdict"] = to_string(rep.verdict);
      j.update(minima_json(rep.minima));
      j["basis"] = rep.certificate.basis ? json_matrix(*rep.certificate.basis) : Json(nullptr);
      j["parity_argument"] = {{"even_min", json_number(arg.even_min.value)},
                              {"odd_min", json_number(arg.odd_min.value)},
                              {"even_min_enumerated", json_number(arg.even_min_enumerated.value)},
                              {"odd_min_enumerated", json_number(arg.odd_min_enumerated.value)},
                              {"covolume", json_number(arg.covolume)},
                              {"even_tuple_divisor", json_number(arg.even_tuple_divisor)},
                              {"basis_needs_odd_vector", arg.basis_needs_odd_vector},
                              {"odd_vectors_too_long", arg.odd_vectors_too_long}};
      j["consistent"] = rep.consistent;
      emit(j);
    } else {
      out_ << "parity lattice n = " << rep.n << ", norm " << to_string(kind) << "\n";
      out_ << lambda_label(kind) << " = " << format_values(rep.minima.minima) << "\n";
      out_ << "verdict: " << to_string(rep.verdict) << "\n";
      out_ << "even coset minimum: " << format_value(arg.even_min) << " (enumerated "
           << format_value(arg.even_min_enumerated) << ")\n";
      out_ << "odd coset minimum: " << format_value(arg.odd_min) << " (enumerated "
           << format_value(arg.odd_min_enumerated) << ")\n";
      out_ << "|det| = " << arg.covolume.get_str() << "; det of any all-even " << rep.n
           << "-tuple is divisible by " << arg.even_tuple_divisor.get_str() << "\n";
      out_ << "every basis contains an odd vector: " << yes_no(arg.basis_needs_odd_vector) << "\n";
      out_ << "odd vectors longer than " << lambda_label(kind) << "_n: "
           << yes_no(arg.odd_vectors_too_long) << "\n";
      out_ << "consistent: " << yes_no(rep.consistent) << "\n";
    }
    if (!rep.consistent) throw ConsistencyError("family report is inconsistent");
    return rep.verdict == Verdict::Standard ? kSuccess : kNonStandard;
  }

  int nearest() {
    const BasisFile f = load();
    const RatVector v = parse_point(opts_.point);
    if (v.size() != f.basis.dim()) {
      throw InputError("point has " + std::to_string(v.size()) + " coordinates, basis dimension is " +
                       std::to_string(f.basis.dim()));
    }
    const EqualityReport rep = equality_case_analyze(f.basis, v);
    const NearestPointResult& np = rep.nearest;
    if (opts_.json) {
      Json j;
      j["command"] = "nearest";
      j["dim"] = f.basis.dim();
      j["target"] = json_vector(v);
      j["point"] = json_vector(np.point);
      j["coeffs"] = json_vector(np.coeffs);
      j["dist_sq"] = json_number(np.dist_sq);
      j["bound_sq"] = json_number(np.bound_sq);
      j["at_equality"] = np.at_equality;
      j["equality_conditions"] = {{"pairwise_orthogonal", rep.pairwise_orthogonal},
                                  {"equal_row_norms", rep.equal_row_norms},
                                  {"half_integer_coefficients", rep.half_integer_coefficients}};
      j["target_coefficients"] = json_vector(rep.coefficients);
      j["consistent"] = rep.consistent;
      emit(j);
    } else {
      out_ << "target = " << format_vector(v) << "\n";
      out_ << "point = " << format_vector(np.point) << "\n";
      out_ << "coefficients = " << format_vector(np.coeffs) << "\n";
      out_ << "dist² = " << np.dist_sq.get_str() << "\n";
      out_ << "bound² = " << np.bound_sq.get_str() << "  (n/4 · max ‖b_i‖²)\n";
      out_ << "at_equality = " << (np.at_equality ? "true" : "false") << "\n";
      out_ << "equality conditions: orthogonal = " << bool_str(rep.pairwise_orthogonal)
           << ", equal norms = " << bool_str(rep.equal_row_norms)
           << ", half-integer coefficients = " << bool_str(rep.half_integer_coefficients) << "\n";
    }
    if (!rep.consistent) throw ConsistencyError("nearest: equality report is inconsistent");
    return kSuccess;
  }

 private:
  static const char* yes_no(bool b) { return b ? "yes" : "no"; }
  static const char* bool_str(bool b) { return b ? "true" : "false"; }

  BasisFile load() {
    BasisFile f = read_basis_file(opts_.file);
    if (f.basis.dim() > opts_.max_dim) {
      throw InputError("dimension " + std::to_string(f.basis.dim()) + " exceeds --max-dim " +
                       std::to_string(opts_.max_dim));
    }
    return f;
  }

  NormKind norm_or_default(std::optional<NormKind> from_file) const {
    if (opts_.norm) {
      auto k = parse_norm_kind(*opts_.norm);
      if (!k) throw InputError("unknown norm '" + *opts_.norm + "' (expected l1, l2 or linf)");
      return *k;
    }
    return from_file.value_or(NormKind::L2);
  }

  NormKind norm_for(const BasisFile& f) const { return norm_or_default(f.norm); }

  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

  const Options& opts_;
  std::ostream& out_;
  EnumerationLimits limits_;
};

}  // namespace

BasisFile parse_basis(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw InputError("empty basis file");
  if (text[first] == '{') return parse_json_basis(text);
  return parse_plain_basis(text);
}

BasisFile read_basis_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read basis file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_basis(buf.str());
}

RatVector parse_point(const std::vector<std::string>& tokens) {
  RatVector out;
  for (const auto& token : tokens) {
    std::string piece;
    std::istringstream split(token);
    while (std::getline(split, piece, ',')) {
      std::istringstream words(piece);
      std::string word;
      while (words >> word) {
        std::string t = word;
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        Rational q;
        if (t.empty() || q.set_str(t, 10) != 0 || q.get_den() == 0) {
          throw InputError("not a rational coordinate: '" + word + "'");
        }
        q.canonicalize();
        out.push_back(q);
      }
    }
  }
  if (out.empty()) throw InputError("no point coordinates given");
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Exact successive minima and standardness of integer lattices", "stdlat"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", opts.json, "Machine-readable JSON output with full certificates");
  app.add_option("--norm", opts.norm, "Norm: l1, l2 or linf (default: file's norm, else l2)");
  app.add_option("--max-candidates", opts.max_candidates, "Enumeration candidate ceiling")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-dim", opts.max_dim, "Largest accepted dimension")->check(CLI::PositiveNumber);

  auto* minima = app.add_subcommand("minima", "Successive minima with independent witnesses");
  minima->add_option("file", opts.file, "Basis file (JSON or plain text)")->required();
  auto* check = app.add_subcommand("check", "Decide standardness (exit 0 Standard, 3 NonStandard)");
  check->add_option("file", opts.file, "Basis file")->required();
  auto* standardize = app.add_subcommand("standardize", "Basis achieving the L2 minima (dim <= 4)");
  standardize->add_option("file", opts.file, "Basis file")->required();
  auto* reduce = app.add_subcommand("reduce2d", "Reduce a 2D basis under the chosen norm");
  reduce->add_option("file", opts.file, "Basis file")->required();
  auto* family = app.add_subcommand("family", "Verify the parity lattice of dimension n");
  family->add_option("n", opts.family_n, "Dimension")->required();
  auto* nearest = app.add_subcommand("nearest", "Nearest-plane rounding towards a rational point");
  nearest->add_option("file", opts.file, "Basis file")->required();
  nearest->add_option("point", opts.point, "Coordinates as p/q (use -- before negative values)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    Runner runner(opts, out);
    if (minima->parsed()) return runner.minima();
    if (check->parsed()) return runner.check();
    if (standardize->parsed()) return runner.standardize();
    if (reduce->parsed()) return runner.reduce2d();
    if (family->parsed()) return runner.family();
    if (nearest->parsed()) return runner.nearest();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceError;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInputError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 2);
  argv.push_back("stdlat");
  for (const auto& a : args) argv.push_back(a.c_str());
  argv.push_back(nullptr);
  return run(static_cast<int>(args.size() + 1), argv.data(), out, err);
}

}  // namespace stdlat::cli
