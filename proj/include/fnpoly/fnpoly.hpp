#pragma once

#include "fnpoly/exact.hpp"
#include "fnpoly/freeprob.hpp"
#include "fnpoly/json_io.hpp"
#include "fnpoly/multipoly.hpp"
#include "fnpoly/partitions.hpp"
#include "fnpoly/rmt.hpp"
#include "fnpoly/series.hpp"
