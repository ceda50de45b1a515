#pragma once

// Grover walk on the ladder graph with an absorbing sink.

#include "chebyshev.hpp"
#include "darkspace.hpp"
#include "formulas.hpp"
#include "graph.hpp"
#include "jacobi.hpp"
#include "report.hpp"
#include "spectral.hpp"
#include "state.hpp"
#include "verify.hpp"
#include "walk.hpp"
