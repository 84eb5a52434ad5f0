#pragma once

#include "smsl/posesim.hpp"

#include "json_util.hpp"

namespace smsl::detail {

double round_sig9(double value);

ordered_json pose_json(const Pose& pose);
ordered_json env_json(const EnvConfig& env);

} // namespace smsl::detail
