#include "stdlat/norms.hpp"

#include <algorithm>
#include <cctype>

#include "stdlat/errors.hpp"

namespace stdlat {

namespace {

void require_same_kind(const NormValue& a, const NormValue& b) {
  if (a.kind != b.kind) {
    throw InputError("cannot compare norm values of different kinds (" +
                     std::string(to_string(a.kind)) + " vs " +
                     std::string(to_string(b.kind)) + ")");
  }
}

template <typename Vec>
NormValue measure_impl(const Vec& v, NormKind kind) {
  NormValue out{kind, 0};
  switch (kind) {
    case NormKind::L1:
      for (const auto& x : v) out.value += abs(x);
      break;
    case NormKind::L2:
      for (const auto& x : v) out.value += x * x;
      break;
    case NormKind::Linf:
      for (const auto& x : v) out.value = std::max<Rational>(out.value, abs(x));
      break;
  }
  return out;
}

}  // namespace

std::string_view to_string(NormKind kind) {
  switch (kind) {
    case NormKind::L1:
      return "l1";
    case NormKind::L2:
      return "l2";
    case NormKind::Linf:
      return "linf";
  }
  return "?";
}

std::optional<NormKind> parse_norm_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "l1") return NormKind::L1;
  if (lower == "l2") return NormKind::L2;
  if (lower == "linf") return NormKind::Linf;
  return std::nullopt;
}

std::strong_ordering operator<=>(const NormValue& a, const NormValue& b) {
  require_same_kind(a, b);
  const int c = cmp(a.value, b.value);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool operator==(const NormValue& a, const NormValue& b) {
  require_same_kind(a, b);
  return a.value == b.value;
}

NormValue measure(const IntVector& v, NormKind kind) { return measure_impl(v, kind); }
NormValue measure(const RatVector& v, NormKind kind) { return measure_impl(v, kind); }

bool norm_le(const NormValue& a, const NormValue& b) { return a <= b; }

NormValue enumeration_radius_in_l2(const NormValue& bound, std::size_t dim) {
  switch (bound.kind) {
    case NormKind::L1:
      return {NormKind::L2, bound.value * bound.value};
    case NormKind::Linf:
      return {NormKind::L2, Rational(static_cast<unsigned long>(dim)) * bound.value * bound.value};
    case NormKind::L2:
      break;
  }
  return bound;
}

NormValue scale_norm(const NormValue& v, const Integer& factor) {
  Rational f(abs(factor));
  if (v.kind == NormKind::L2) return {v.kind, v.value * f * f};
  return {v.kind, v.value * f};
}

std::string format_value(const NormValue& v) { return v.value.get_str(); }

}  // namespace stdlat
