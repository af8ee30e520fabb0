#pragma once

#include "ebn/chars.hpp"
#include "ebn/control.hpp"
#include "ebn/error.hpp"
#include "ebn/examples.hpp"
#include "ebn/interp.hpp"
#include "ebn/nbe.hpp"
#include "ebn/parser.hpp"
#include "ebn/primitives.hpp"
#include "ebn/printer.hpp"
#include "ebn/rational.hpp"
#include "ebn/semantics.hpp"
#include "ebn/syntax.hpp"
#include "ebn/typecheck.hpp"
