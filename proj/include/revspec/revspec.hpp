#ifndef REVSPEC_REVSPEC_HPP
#define REVSPEC_REVSPEC_HPP

#include "revspec/arl/ast.hpp"
#include "revspec/arl/interp.hpp"
#include "revspec/arl/inverter.hpp"
#include "revspec/arl/parser.hpp"
#include "revspec/arl/printer.hpp"
#include "revspec/arl/wellformed.hpp"
#include "revspec/equiv.hpp"
#include "revspec/error.hpp"
#include "revspec/pe/compress.hpp"
#include "revspec/pe/division.hpp"
#include "revspec/pe/specializer.hpp"
#include "revspec/projections.hpp"
#include "revspec/rtm/machine.hpp"
#include "revspec/rtm/simulate.hpp"
#include "revspec/rtm_in_arl.hpp"
#include "revspec/sexpr.hpp"
#include "revspec/value.hpp"

#endif
