#pragma once

#include "hocc/asymptotics.hpp"
#include "hocc/error.hpp"
#include "hocc/fading.hpp"
#include "hocc/oracle.hpp"
#include "hocc/parallel.hpp"
#include "hocc/quadrature.hpp"
#include "hocc/regime.hpp"
#include "hocc/result.hpp"
#include "hocc/specfun.hpp"
#include "hocc/statistics.hpp"
