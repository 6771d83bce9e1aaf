#pragma once

#include "chentype/geometry/chart.hpp"
#include "chentype/geometry/forms.hpp"
