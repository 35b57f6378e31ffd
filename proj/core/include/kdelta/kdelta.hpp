#pragma once

#include "kdelta/components.hpp"
#include "kdelta/decomposition.hpp"
#include "kdelta/error.hpp"
#include "kdelta/graph.hpp"
#include "kdelta/serialize.hpp"
#include "kdelta/stats.hpp"
