#pragma once

#include "franke/verify/campaign.hpp"
#include "franke/verify/generators.hpp"
#include "franke/verify/io.hpp"
#include "franke/verify/random.hpp"
