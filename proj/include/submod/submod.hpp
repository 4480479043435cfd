#pragma once

#include "submod/baselines.hpp"
#include "submod/bidirectional.hpp"
#include "submod/element.hpp"
#include "submod/oracle.hpp"
#include "submod/report_io.hpp"
#include "submod/runner.hpp"
#include "submod/smooth_histogram.hpp"
#include "submod/stream_io.hpp"
#include "submod/threshold_stream.hpp"
#include "submod/window.hpp"
