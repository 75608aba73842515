#pragma once

#include "sl3web/qlaurent.hpp"
#include "sl3web/quotient_ring.hpp"
#include "sl3web/combmap.hpp"
#include "sl3web/canonical.hpp"
#include "sl3web/connectivity.hpp"
#include "sl3web/coloring.hpp"
#include "sl3web/formats.hpp"
#include "sl3web/reducer.hpp"
#include "sl3web/primedec.hpp"
#include "sl3web/parallel.hpp"
#include "sl3web/enumerator.hpp"
#include "sl3web/symmetry.hpp"
#include "sl3web/reference_catalog.hpp"
