#pragma once

#include "singlehead/analysis.hpp"
#include "singlehead/driver.hpp"
#include "singlehead/errors.hpp"
#include "singlehead/forgetting.hpp"
#include "singlehead/graph.hpp"
#include "singlehead/horn.hpp"
#include "singlehead/order.hpp"
#include "singlehead/propagation.hpp"
#include "singlehead/shmin.hpp"
