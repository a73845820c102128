#pragma once

#include "commhilb/cartan.hpp"
#include "commhilb/census.hpp"
#include "commhilb/census_io.hpp"
#include "commhilb/intmat.hpp"
#include "commhilb/molien.hpp"
#include "commhilb/oracle.hpp"
#include "commhilb/rational.hpp"
#include "commhilb/triseries.hpp"
#include "commhilb/unipoly.hpp"
#include "commhilb/verify.hpp"
#include "commhilb/version.hpp"
