#pragma once

#include "franke/percomplex/complex.hpp"
#include "franke/percomplex/graded.hpp"
#include "franke/percomplex/homology.hpp"
#include "franke/percomplex/ops.hpp"
