#pragma once

#include "complex.hpp"
#include "corpus.hpp"
#include "dichromate.hpp"
#include "errors.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "matroid.hpp"
#include "multigraph.hpp"
#include "poly.hpp"
#include "potts.hpp"
#include "verify.hpp"
#include "whitney.hpp"
