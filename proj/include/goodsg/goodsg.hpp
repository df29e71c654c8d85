#pragma once

// Umbrella header.

#include "corpus.hpp"
#include "ideals.hpp"
#include "ingest/field.hpp"
#include "ingest/presentation.hpp"
#include "ingest/value_space.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "noether.hpp"
#include "semigroup.hpp"
#include "truncated_set.hpp"
