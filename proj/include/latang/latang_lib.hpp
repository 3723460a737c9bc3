#pragma once

// Umbrella header for the library (everything except the CLI).

#include "latang/angleset.hpp"
#include "latang/exactnum.hpp"
#include "latang/hilbert.hpp"
#include "latang/intvec.hpp"
#include "latang/membership.hpp"
#include "latang/oracle.hpp"
#include "latang/shells.hpp"
#include "latang/witness.hpp"
