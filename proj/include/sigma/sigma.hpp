#pragma once

#include "sigma/bitset.hpp"
#include "sigma/cache.hpp"
#include "sigma/classifier.hpp"
#include "sigma/corpus.hpp"
#include "sigma/descriptor.hpp"
#include "sigma/errors.hpp"
#include "sigma/families.hpp"
#include "sigma/field.hpp"
#include "sigma/graph.hpp"
#include "sigma/group.hpp"
#include "sigma/group_graphs.hpp"
#include "sigma/hash.hpp"
#include "sigma/lattice.hpp"
#include "sigma/limits.hpp"
#include "sigma/module.hpp"
#include "sigma/parallel.hpp"
#include "sigma/quotient.hpp"
#include "sigma/report.hpp"
#include "sigma/semidirect.hpp"
#include "sigma/structure.hpp"
#include "sigma/subgroup.hpp"
