#pragma once

// Everything: exact fields, Hopf algebras, coefficient modules, cyclic modules,
// the Hopf-cyclic complexes, pairings, the catalog and JSON input.

#include "catalog.hpp"
#include "check_report.hpp"
#include "complexes.hpp"
#include "cyclic.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "hopf.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "pairing.hpp"
#include "rational.hpp"
#include "sayd.hpp"
#include "scenarios.hpp"
#include "sparse.hpp"
#include "tensor.hpp"
