#pragma once

#include "pathkit/canonical.hpp"
#include "pathkit/census.hpp"
#include "pathkit/constructions.hpp"
#include "pathkit/graph.hpp"
#include "pathkit/graph6.hpp"
#include "pathkit/iso.hpp"
#include "pathkit/paths.hpp"
#include "pathkit/report_json.hpp"
