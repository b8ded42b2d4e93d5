#pragma once

#include "owjump/engine.hpp"
#include "owjump/error.hpp"
#include "owjump/format.hpp"
#include "owjump/model.hpp"
#include "owjump/oracles.hpp"
#include "owjump/semantics.hpp"
#include "owjump/transforms.hpp"
