#pragma once

#include "weilzeta/errors.hpp"
#include "weilzeta/arith.hpp"
#include "weilzeta/fgab.hpp"
#include "weilzeta/number_field.hpp"
#include "weilzeta/special_value.hpp"
#include "weilzeta/lfunc.hpp"
#include "weilzeta/motivic_rank.hpp"
#include "weilzeta/weil_tables.hpp"
#include "weilzeta/ff_zeta.hpp"
#include "weilzeta/report.hpp"
#include "weilzeta/commands.hpp"
#include "weilzeta/acceptance.hpp"
