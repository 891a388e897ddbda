#pragma once

#include "padicmeasure/bernoulli.hpp"
#include "padicmeasure/digits.hpp"
#include "padicmeasure/error.hpp"
#include "padicmeasure/integrate.hpp"
#include "padicmeasure/iwasawa.hpp"
#include "padicmeasure/measure.hpp"
#include "padicmeasure/padic.hpp"
#include "padicmeasure/rational.hpp"
#include "padicmeasure/region.hpp"
#include "padicmeasure/serialize.hpp"
#include "padicmeasure/zeta.hpp"
