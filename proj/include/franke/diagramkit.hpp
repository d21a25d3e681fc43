#pragma once

#include "franke/diagramkit/bar.hpp"
#include "franke/diagramkit/constructions.hpp"
#include "franke/diagramkit/diagram.hpp"
