#pragma once

#include "scf/arith.hpp"
#include "scf/core.hpp"
#include "scf/cubicfield.hpp"
#include "scf/eisenstein.hpp"
#include "scf/groupring.hpp"
#include "scf/lattice.hpp"
#include "scf/report.hpp"
