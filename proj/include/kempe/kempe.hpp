#pragma once

#include "kempe/error.hpp"
#include "kempe/graph.hpp"
#include "kempe/embedding.hpp"
#include "kempe/surgery.hpp"
#include "kempe/generate.hpp"
#include "kempe/isomorphism.hpp"
#include "kempe/matching.hpp"
#include "kempe/coloring.hpp"
#include "kempe/configuration.hpp"
#include "kempe/petersen.hpp"
#include "kempe/search.hpp"
#include "kempe/solver.hpp"
#include "kempe/snarks.hpp"
#include "kempe/io.hpp"
#include "kempe/experiment.hpp"
