#pragma once

#include "lieext/algebra.hpp"
#include "lieext/error.hpp"
#include "lieext/io.hpp"
#include "lieext/matrix.hpp"
#include "lieext/matrix_bundle.hpp"
#include "lieext/parallel.hpp"
#include "lieext/poisson.hpp"
#include "lieext/rational.hpp"
#include "lieext/spectral.hpp"
#include "lieext/wtensor.hpp"
