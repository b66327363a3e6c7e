#pragma once

#include "condtorus/constructions.hpp"
#include "condtorus/errors.hpp"
#include "condtorus/formulas.hpp"
#include "condtorus/general_graph.hpp"
#include "condtorus/index_set.hpp"
#include "condtorus/io.hpp"
#include "condtorus/oracle.hpp"
#include "condtorus/torus_graph.hpp"
#include "condtorus/torus_spec.hpp"
#include "condtorus/verification.hpp"
