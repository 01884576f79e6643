#pragma once

// Umbrella header for the x3sat library.

#include "x3sat/assignment.hpp"
#include "x3sat/clause.hpp"
#include "x3sat/compare.hpp"
#include "x3sat/condition.hpp"
#include "x3sat/corpus.hpp"
#include "x3sat/evaluate.hpp"
#include "x3sat/formula.hpp"
#include "x3sat/generator.hpp"
#include "x3sat/literal.hpp"
#include "x3sat/oracle.hpp"
#include "x3sat/policy.hpp"
#include "x3sat/report.hpp"
#include "x3sat/scan.hpp"
#include "x3sat/shrink.hpp"
#include "x3sat/trace.hpp"
#include "x3sat/trace_io.hpp"
#include "x3sat/x3f.hpp"
