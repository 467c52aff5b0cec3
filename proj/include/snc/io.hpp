#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "snc/optimality.hpp"

namespace snc {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// One member as written in an instance file.
struct MemberSpec {
  enum class Kind { Affine, MaxAffine, ImproperDomain, QcSublevel, QcComposite, SmoothQc };
  std::string id;
  Kind kind = Kind::Affine;
  std::optional<ExtendedFunction> fn;  // convex kinds
  std::optional<QCMember> qc;          // quasi-convex kinds
};

std::string to_string(MemberSpec::Kind k);

struct SipSpec {
  Vec cost;
  std::vector<std::pair<Vec, Rational>> constraints;
  std::optional<CircleSampler> sampler;
  std::vector<int> levels;
};

/// Parsed instance file. Optional fields are printed only when present.
struct InstanceFile {
  int version = kFormatVersion;
  std::string command;
  std::size_t dim = 0;
  std::vector<MemberSpec> members;
  std::optional<Vec> point;
  std::vector<Rational> epsilon;
  std::optional<std::string> s_grid;
  std::optional<FormulaMode> mode;
  std::optional<PolyhedralFunction> objective;
  std::optional<Qualification> qualification;
  std::optional<Vec> witness;
  std::optional<ClosureEvidence> closure_evidence;
  std::optional<SipSpec> sip;

  bool convex_family() const;
  /// SupFamily or SublevelOracleQC built from the members. Throws InputError on a mixed family.
  Constraints constraints() const;
  const Vec& require_point() const;
  std::vector<Rational> epsilons() const;  // [1] when absent
  SGrid grid() const;
  FormulaMode formula_mode() const;        // sampled when absent
};

/// The commands an instance file may name.
const std::vector<std::string>& instance_commands();

/// Strict parse. Any schema error throws InputError naming the field path.
InstanceFile parse_instance(const std::string& text);
InstanceFile parse_instance_file(const std::string& path);

/// Canonical text; print(parse(print(f))) == print(f).
std::string print_instance(const InstanceFile& f);

/// Instance file for a generated formula instance or program.
InstanceFile instance_from(const FormulaInstance& in);
InstanceFile instance_from(const ProgramInstance& prog, FormulaMode mode);

Json json_rational(const Rational& r);
Json json_vec(const Vec& v);
Json json_cone(const ConeGen& c);

}  // namespace snc
