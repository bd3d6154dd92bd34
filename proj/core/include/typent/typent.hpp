#pragma once

#include "typent/boxworld.hpp"
#include "typent/composite.hpp"
#include "typent/error.hpp"
#include "typent/faces.hpp"
#include "typent/grouprep.hpp"
#include "typent/montecarlo.hpp"
#include "typent/purity.hpp"
#include "typent/randomize.hpp"
#include "typent/serialize.hpp"
#include "typent/statespace.hpp"
