#pragma once

#include "mlkit/asymptotics.hpp"
#include "mlkit/closedforms.hpp"
#include "mlkit/core.hpp"
#include "mlkit/crosscheck.hpp"
#include "mlkit/evaluate.hpp"
#include "mlkit/kernel.hpp"
#include "mlkit/quadrature.hpp"
#include "mlkit/representation.hpp"
#include "mlkit/series.hpp"
