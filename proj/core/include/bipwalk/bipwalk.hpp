#pragma once

#include "bipwalk/defs.hpp"
#include "bipwalk/errors.hpp"
#include "bipwalk/graph.hpp"
#include "bipwalk/walk.hpp"
#include "bipwalk/trace.hpp"
#include "bipwalk/trace_io.hpp"
#include "bipwalk/matrix.hpp"
#include "bipwalk/eigen.hpp"
#include "bipwalk/subspace.hpp"
#include "bipwalk/spectral.hpp"
#include "bipwalk/perturbative.hpp"
#include "bipwalk/table.hpp"
