#pragma once

#include "franke/posetkit/contractible.hpp"
#include "franke/posetkit/poset.hpp"
#include "franke/posetkit/shapes.hpp"
