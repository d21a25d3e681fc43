#pragma once

#include "franke/realization/crowned.hpp"
#include "franke/realization/foundational.hpp"
#include "franke/realization/q.hpp"
#include "franke/realization/verifiers.hpp"
