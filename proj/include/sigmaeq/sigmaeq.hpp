#pragma once

#include "bounds.hpp"
#include "distinct.hpp"
#include "enumerate.hpp"
#include "factor.hpp"
#include "integer.hpp"
#include "pell.hpp"
#include "s3.hpp"
#include "symmetric.hpp"

namespace sigmaeq {

inline constexpr const char* version = "1.0.0";

} // namespace sigmaeq
