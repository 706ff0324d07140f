#ifndef DRINFELD_DRINFELD_HPP
#define DRINFELD_DRINFELD_HPP

#include "carlitz.hpp"
#include "cocycle.hpp"
#include "congruence.hpp"
#include "hecke.hpp"
#include "json_io.hpp"
#include "properties.hpp"
#include "quotient.hpp"
#include "suite.hpp"
#include "tree.hpp"

#endif  // DRINFELD_DRINFELD_HPP
