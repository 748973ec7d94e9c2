#include "stdlat/standardness.hpp"

#include <algorithm>
#include <string>

#include "stdlat/cvp.hpp"
#include "stdlat/errors.hpp"
#include "stdlat/exactlin.hpp"

namespace stdlat {

namespace {

class BasisSearch {
 public:
  BasisSearch(const SuccessiveMinima& sm, const ShortVectorList& list,
              const LatticeBasis& b, SearchStats& stats)
      : n_(b.dim()), sm_(sm), list_(list), stats_(stats) {
    levels_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t idx = 0; idx < list.vectors.size(); ++idx) {
        if (list.vectors[idx].norm == sm.minima[i]) levels_[i].push_back(idx);
      }
      stats_.candidates_per_level.push_back(levels_[i].size());
    }
    coeffs_.reserve(list.vectors.size());
    for (const auto& sv : list.vectors) coeffs_.push_back(member(b, sv.coords).coeffs);
  }

  std::optional<IntMatrix> run() {
    if (!descend(0, RowEchelon(n_))) return std::nullopt;
    IntMatrix basis;
    for (std::size_t idx : chosen_) basis.push_back(list_.vectors[idx].coords);
    return basis;
  }

 private:
  bool descend(std::size_t level, const RowEchelon& echelon) {
    ++stats_.nodes_explored;
    if (level == n_) return true;
    // Within a run of equal minima the order of the chosen vectors is
    // irrelevant, so only increasing candidate positions are tried.
    std::size_t start = 0;
    if (level > 0 && sm_.minima[level] == sm_.minima[level - 1]) {
      start = position_[level - 1] + 1;
    }
    const auto& candidates = levels_[level];
    for (std::size_t pos = start; pos < candidates.size(); ++pos) {
      const std::size_t idx = candidates[pos];
      RowEchelon next = echelon;
      if (!next.add(coeffs_[idx])) {
        ++stats_.pruned_by_rank;
        continue;
      }
      partial_.push_back(coeffs_[idx]);
      // A partial tuple extends to a basis iff it is primitive.
      if (maximal_minor_gcd(partial_) != 1) {
        ++stats_.pruned_by_minors;
        partial_.pop_back();
        continue;
      }
      chosen_.push_back(idx);
      position_.push_back(pos);
      if (descend(level + 1, next)) return true;
      chosen_.pop_back();
      position_.pop_back();
      partial_.pop_back();
    }
    return false;
  }

  std::size_t n_;
  const SuccessiveMinima& sm_;
  const ShortVectorList& list_;
  SearchStats& stats_;
  std::vector<std::vector<std::size_t>> levels_;
  IntMatrix coeffs_;
  IntMatrix partial_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> position_;
};

void sort_by_l2(IntMatrix& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const IntVector& a, const IntVector& b) {
    return dot(a, a) < dot(b, b);
  });
}

std::optional<IntVector> vector_outside(const IntMatrix& lattice, const IntMatrix& sub) {
  for (const auto& row : lattice) {
    if (!member(sub, row)) return row;
  }
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t j = i + 1; j < lattice.size(); ++j) {
      IntVector s = add(lattice[i], lattice[j]);
      if (!member(sub, s)) return s;
    }
  }
  return std::nullopt;
}

IntMatrix standardize_rows(const IntMatrix& g, const EnumerationLimits& limits) {
  const std::size_t k = g.size();
  if (k == 1) return g;

  const SuccessiveMinima sm = successive_minima(g, NormKind::L2, limits);
  const IntMatrix& c = sm.witnesses;
  IntMatrix section = section_lattice(g, IntMatrix(c.begin(), c.end() - 1));
  IntMatrix out = standardize_rows(section, limits);
  out.push_back(c.back());

  if (!is_basis_of(out, g)) {
    if (k != 4) {
      throw ConsistencyError("standardize: witnesses failed to form a basis in dimension " +
                             std::to_string(k));
    }
    // The sublattice K spanned by `out` has index 2 only when its rows are
    // mutually orthogonal with equal lengths; then every point outside K sits
    // at a deep hole of K and v - nearest(v) is a half-sum of the rows.
    bool orthogonal = true;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) orthogonal = orthogonal && dot(out[i], out[j]) == 0;
    }
    const Integer len = dot(out[0], out[0]);
    const bool equal = std::all_of(out.begin(), out.end(),
                                   [&](const IntVector& r) { return dot(r, r) == len; });
    if (!orthogonal || !equal) {
      throw ConsistencyError("standardize: index > 1 without the orthogonal equal-length configuration");
    }
    auto v = vector_outside(g, out);
    if (!v) throw ConsistencyError("standardize: no lattice vector outside the witness sublattice");
    const NearestPointResult np = nearest_plane(out, to_rational(*v));
    out[3] = sub(*v, np.point);
    if (!is_basis_of(out, g)) {
      throw ConsistencyError("standardize: half-coset completion is not a basis");
    }
  }
  sort_by_l2(out);
  for (std::size_t i = 0; i < k; ++i) {
    if (measure(out[i], NormKind::L2) != sm.minima[i]) {
      throw ConsistencyError("standardize: row " + std::to_string(i + 1) +
                             " does not achieve lambda_" + std::to_string(i + 1));
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Verdict v) {
  return v == Verdict::Standard ? "Standard" : "NonStandard";
}

StandardnessCertificate check_standard(const LatticeBasis& b, NormKind kind,
                                       const EnumerationLimits& limits) {
  StandardnessCertificate cert;
  cert.minima = successive_minima(b, kind, limits);
  const ShortVectorList list = enumerate_short(b, kind, cert.minima.minima.back(), limits);
  BasisSearch search(cert.minima, list, b, cert.search_stats);
  cert.basis = search.run();
  cert.verdict = cert.basis ? Verdict::Standard : Verdict::NonStandard;
  if (cert.basis) {
    if (!is_basis_of(*cert.basis, b)) {
      throw ConsistencyError("check_standard: certificate rows are not a basis");
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
      if (measure((*cert.basis)[i], kind) != cert.minima.minima[i]) {
        throw ConsistencyError("check_standard: certificate row norm mismatch");
      }
    }
  }
  return cert;
}

IntMatrix standardize_low_dim(const LatticeBasis& b, const EnumerationLimits& limits) {
  if (b.dim() > 4) {
    throw InputError("standardize: dimension " + std::to_string(b.dim()) +
                     " > 4; lattices of dimension >= 5 need not be standard");
  }
  IntMatrix out = standardize_rows(b.rows(), limits);
  if (!is_basis_of(out, b)) {
    throw ConsistencyError("standardize: result is not a basis of the input lattice");
  }
  return out;
}

IntMatrix section_lattice(const IntMatrix& generators, const IntMatrix& spanning) {
  IntMatrix coeffs;
  for (const auto& s : spanning) {
    Membership m = member(generators, s);
    if (!m) throw InputError("section_lattice: spanning vector is not in the lattice");
    coeffs.push_back(std::move(m.coeffs));
  }
  if (rank(coeffs) != spanning.size()) {
    throw InputError("section_lattice: spanning vectors are linearly dependent");
  }
  const std::size_t k = generators.size();
  // x·G lies in H iff x is orthogonal to every rational relation z with
  // coeffs·z = 0; the integer solutions of that are saturated by construction.
  const IntMatrix relations = coeffs.empty() ? identity_matrix(k) : integer_right_kernel(coeffs);
  IntMatrix relations_t(k, IntVector(relations.size()));
  for (std::size_t i = 0; i < relations.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) relations_t[j][i] = relations[i][j];
  }
  const IntMatrix kernel = integer_left_kernel(relations_t);
  return multiply(kernel, generators);
}

IntMatrix section_lattice(const LatticeBasis& b, const IntMatrix& spanning) {
  return section_lattice(b.rows(), spanning);
}

bool is_orthogonal_basis(const LatticeBasis& b) {
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = i + 1; j < b.dim(); ++j) {
      if (dot(b.row(i), b.row(j)) != 0) return false;
    }
  }
  return true;
}

}  // namespace stdlat
