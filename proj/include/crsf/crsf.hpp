#pragma once

#include "crsf/berger.hpp"
#include "crsf/dedekind.hpp"
#include "crsf/error.hpp"
#include "crsf/exactq.hpp"
#include "crsf/fixtures.hpp"
#include "crsf/invariants.hpp"
#include "crsf/obstruct.hpp"
#include "crsf/rrketa.hpp"
#include "crsf/seifert.hpp"
#include "crsf/spectrum.hpp"
#include "crsf/verify.hpp"
