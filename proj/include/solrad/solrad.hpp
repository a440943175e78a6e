#pragma once

#include "solrad/catalog.hpp"
#include "solrad/classes.hpp"
#include "solrad/criterion.hpp"
#include "solrad/error.hpp"
#include "solrad/gf.hpp"
#include "solrad/group.hpp"
#include "solrad/height.hpp"
#include "solrad/modrep.hpp"
#include "solrad/perm.hpp"
#include "solrad/series.hpp"
