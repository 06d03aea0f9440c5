#pragma once

#include "infoatom/analysis.hpp"
#include "infoatom/basis.hpp"
#include "infoatom/density.hpp"
#include "infoatom/error.hpp"
#include "infoatom/measures.hpp"
#include "infoatom/numerics.hpp"
#include "infoatom/transform.hpp"
