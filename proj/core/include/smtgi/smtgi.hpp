#pragma once

#include "smtgi/alphabet.hpp"
#include "smtgi/apt.hpp"
#include "smtgi/automata.hpp"
#include "smtgi/benchgen.hpp"
#include "smtgi/encoding.hpp"
#include "smtgi/error.hpp"
#include "smtgi/formula.hpp"
#include "smtgi/oracle.hpp"
#include "smtgi/samples.hpp"
#include "smtgi/search.hpp"
#include "smtgi/smtlib.hpp"
#include "smtgi/solver.hpp"
