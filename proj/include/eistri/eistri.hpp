#pragma once

#include "eistri/arith.hpp"
#include "eistri/bijection.hpp"
#include "eistri/core.hpp"
#include "eistri/oracle.hpp"
#include "eistri/params.hpp"
#include "eistri/tree.hpp"
