#ifndef CENTRA_CENTRA_HPP
#define CENTRA_CENTRA_HPP

#include "centra/catalog.hpp"
#include "centra/cayley_table.hpp"
#include "centra/errors.hpp"
#include "centra/isotopy.hpp"
#include "centra/perm_set.hpp"
#include "centra/permutation.hpp"
#include "centra/properties.hpp"
#include "centra/regular.hpp"
#include "centra/representation.hpp"
#include "centra/rng.hpp"
#include "centra/topism.hpp"

#endif  // CENTRA_CENTRA_HPP
