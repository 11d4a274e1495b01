#pragma once

#include "ramsey_p5/budget.hpp"
#include "ramsey_p5/canonical.hpp"
#include "ramsey_p5/certificate.hpp"
#include "ramsey_p5/claims.hpp"
#include "ramsey_p5/colouring.hpp"
#include "ramsey_p5/design.hpp"
#include "ramsey_p5/design_search.hpp"
#include "ramsey_p5/error.hpp"
#include "ramsey_p5/graph.hpp"
#include "ramsey_p5/ramsey_search.hpp"
#include "ramsey_p5/turan.hpp"
#include "ramsey_p5/witness.hpp"
