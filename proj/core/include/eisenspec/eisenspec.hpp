#pragma once

#include "eisenspec/census.hpp"
#include "eisenspec/classify.hpp"
#include "eisenspec/eisenstein.hpp"
#include "eisenspec/expansions.hpp"
#include "eisenspec/isomorphism.hpp"
#include "eisenspec/named.hpp"
#include "eisenspec/polynomial.hpp"
#include "eisenspec/sachs.hpp"
#include "eisenspec/signed_digraph.hpp"
#include "eisenspec/spectra.hpp"
#include "eisenspec/switching.hpp"
#include "eisenspec/unit.hpp"
