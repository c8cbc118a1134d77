#pragma once

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "monocorr/audit/report.hpp"
#include "monocorr/cube/boolean_family.hpp"
#include "monocorr/io/json_io.hpp"
#include "monocorr/stieltjes/step.hpp"

namespace monocorr::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

/// Runs one command line (without the program name). Reports go to the
/// --out file; diagnostics to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CubeCampaign {
  std::vector<audit::AuditReport> reports;
  std::vector<std::string> violations;
};

/// Audits a catalog: Harris sign, Fourier/influence identity and proof
/// identity as assertions; talagrand and kkm rows for every pair of equal
/// dimension, theorem1/theorem2 rows for balanced regular odd-n families,
/// kkl rows for balanced families.
CubeCampaign run_cube_audit(const std::vector<cube::FamilyDescriptor>& catalog, int cap = cube::kDefaultDimensionCap);

/// 1..8 atoms uniform on [-4, 4], total jump mass uniform on (0.05, 1],
/// base uniform on [0, 1 - mass].
stieltjes::MonotoneStep random_step(std::mt19937_64& eng);

/// Random steps f, g and unit directions w, v in dimension 2..8 with
/// <w, v> >= 0 (v flipped otherwise).
io::StepInstance random_step_instance(std::mt19937_64& eng, std::string label);

/// Instances i = 0..count-1 all drawn from one engine seeded by `seed`.
std::vector<io::StepInstance> random_step_instances(std::uint64_t seed, int count);

}  // namespace monocorr::cli
