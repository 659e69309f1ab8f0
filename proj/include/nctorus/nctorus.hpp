#pragma once

#include "nctorus/algebra.hpp"
#include "nctorus/connections.hpp"
#include "nctorus/coverings.hpp"
#include "nctorus/error.hpp"
#include "nctorus/forms.hpp"
#include "nctorus/infinite_cover.hpp"
#include "nctorus/matrix.hpp"
#include "nctorus/phase.hpp"
#include "nctorus/random.hpp"
