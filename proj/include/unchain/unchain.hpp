#pragma once

#include "unchain/chain_analysis.hpp"
#include "unchain/dbscan.hpp"
#include "unchain/dendrogram.hpp"
#include "unchain/fixtures.hpp"
#include "unchain/linkage.hpp"
#include "unchain/metric_space.hpp"
#include "unchain/rips.hpp"
#include "unchain/sl_alpha.hpp"
