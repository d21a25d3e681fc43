#pragma once

#include "franke/exactlin/abelian.hpp"
#include "franke/exactlin/integer.hpp"
#include "franke/exactlin/matrix.hpp"
#include "franke/exactlin/snf.hpp"
#include "franke/exactlin/sparse.hpp"
