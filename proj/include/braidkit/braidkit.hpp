#pragma once

#include "permutation.hpp"
#include "word.hpp"
#include "core.hpp"
#include "garside.hpp"
#include "conjugacy.hpp"
#include "tube.hpp"
#include "periodic.hpp"
#include "embeddings.hpp"
#include "random.hpp"
#include "serialize.hpp"
#include "repro.hpp"
