#pragma once

#include <string>
#include <vector>

#include "snc/functions.hpp"

namespace snc {

struct FamilyMember {
  std::string id;
  ExtendedFunction fn;
};

/// Finite family {f_t} with f = sup_t f_t.
class SupFamily {
 public:
  SupFamily() = default;
  /// Throws InputError on an empty family, duplicate or empty ids, mixed dimensions,
  /// or an improper member with an empty domain.
  SupFamily(std::size_t dim, std::vector<FamilyMember> members);

  std::size_t dim() const { return dim_; }
  const std::vector<FamilyMember>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  /// sup_t f_t(x); improper members give -inf on their domain.
  ExtendedValue evaluate(const Vec& x) const;
  bool has_improper() const;
  /// Every proper member is a single affine piece on the whole space.
  bool all_affine() const;

  /// Throws PreconditionError unless f(x) is finite and f(x) <= 0.
  void require_feasible(const Vec& x) const;

 private:
  std::size_t dim_ = 0;
  std::vector<FamilyMember> members_;
};

/// Finite sample of the scaling parameter s > 0.
///
/// With `tail` set, members with f_t(x) = 0 also contribute the union of
/// s * d0 f_t(x) over all s >= max(values); that set lies inside every
/// d_eps(s f_t)(x) for those s, so the contribution stays an inner sample.
struct SGrid {
  std::vector<Rational> values;
  bool tail = false;
  std::string spec;

  /// {2^lo, ..., 2^hi} with the tail enabled.
  static SGrid geometric(int lo, int hi, bool tail = true);
  /// Explicit list; sorted and deduplicated.
  static SGrid list(std::vector<Rational> values, bool tail = false);
  /// "2^-10..2^10" or "1/2,1,2", optionally followed by ";tail" or ";notail".
  /// Geometric ranges default to the tail, explicit lists do not.
  static SGrid parse(const std::string& text);

  /// Values plus midpoints of consecutive values plus min/2 and 2*max.
  SGrid refined() const;
  const Rational& min() const { return values.front(); }
  const Rational& max() const { return values.back(); }
  /// Canonical text accepted by parse (refined grids print their full list).
  std::string to_string() const;
};

inline SGrid default_grid() { return SGrid::geometric(-10, 10); }
inline SGrid coarse_grid() { return SGrid::list({Rational(1, 2), Rational(1), Rational(2)}); }

}  // namespace snc
