#ifndef TDIFF_TDIFF_HPP
#define TDIFF_TDIFF_HPP

#include "tdiff/adoption.hpp"
#include "tdiff/closure.hpp"
#include "tdiff/contraction.hpp"
#include "tdiff/document.hpp"
#include "tdiff/errors.hpp"
#include "tdiff/generators.hpp"
#include "tdiff/graph.hpp"
#include "tdiff/network.hpp"
#include "tdiff/oracle.hpp"
#include "tdiff/product_set.hpp"
#include "tdiff/rational.hpp"
#include "tdiff/spread.hpp"
#include "tdiff/trace.hpp"
#include "tdiff/transforms.hpp"
#include "tdiff/well_structured.hpp"

#endif  // TDIFF_TDIFF_HPP
