#pragma once

#include "gemmkit/energy.hpp"
#include "gemmkit/engine.hpp"
#include "gemmkit/errors.hpp"
#include "gemmkit/explorer.hpp"
#include "gemmkit/harness.hpp"
#include "gemmkit/kernel_spec.hpp"
#include "gemmkit/matrix.hpp"
#include "gemmkit/problem.hpp"
#include "gemmkit/report.hpp"
#include "gemmkit/repository.hpp"
#include "gemmkit/validation.hpp"
