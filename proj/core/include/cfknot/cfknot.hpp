#pragma once

#include <cfknot/bounds.hpp>
#include <cfknot/braid.hpp>
#include <cfknot/continued_fraction.hpp>
#include <cfknot/curves.hpp>
#include <cfknot/errors.hpp>
#include <cfknot/parse.hpp>
#include <cfknot/rational.hpp>
#include <cfknot/smallness.hpp>
#include <cfknot/surgery.hpp>
