#pragma once

#include "gt/cocycles.hpp"
#include "gt/cyclic_series.hpp"
#include "gt/expansions.hpp"
#include "gt/framing.hpp"
#include "gt/json_io.hpp"
#include "gt/kv.hpp"
#include "gt/linalg.hpp"
#include "gt/loop_ops.hpp"
#include "gt/lyndon.hpp"
#include "gt/rational.hpp"
#include "gt/series.hpp"
#include "gt/signature.hpp"
#include "gt/tangent.hpp"
#include "gt/tensor.hpp"
#include "gt/word.hpp"
