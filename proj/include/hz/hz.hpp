// hz.hpp — umbrella header for the whole library.
#pragma once

#include "hz/closed_form.hpp"
#include "hz/compose.hpp"
#include "hz/edgelist.hpp"
#include "hz/error.hpp"
#include "hz/families.hpp"
#include "hz/graph.hpp"
#include "hz/verify.hpp"
