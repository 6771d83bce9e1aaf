#pragma once

#include "chentype/frames/frame_vec.hpp"
#include "chentype/frames/numeric_frame.hpp"
