#pragma once

#include "ptoral/autgen.hpp"
#include "ptoral/blackburn.hpp"
#include "ptoral/errors.hpp"
#include "ptoral/fusion.hpp"
#include "ptoral/fusion_checks.hpp"
#include "ptoral/group.hpp"
#include "ptoral/modarith.hpp"
#include "ptoral/report.hpp"
#include "ptoral/saturation.hpp"
#include "ptoral/subgroup.hpp"
#include "ptoral/suite.hpp"
