#pragma once

// Convenience header pulling in the whole library.

#include "konig/bipartite_graph.hpp"
#include "konig/cover.hpp"
#include "konig/io.hpp"
#include "konig/matching.hpp"
#include "konig/matrix.hpp"
#include "konig/oracle.hpp"
#include "konig/report.hpp"
