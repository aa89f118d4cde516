#pragma once

#include "unionprob/approximation.hpp"
#include "unionprob/compensated_sum.hpp"
#include "unionprob/errors.hpp"
#include "unionprob/oracle.hpp"
#include "unionprob/prob_core.hpp"
#include "unionprob/symmetric_series.hpp"
