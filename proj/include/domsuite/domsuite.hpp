// Copyright 2026 The domsuite Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "domsuite/check_record.hpp"
#include "domsuite/engine.hpp"
#include "domsuite/errors.hpp"
#include "domsuite/graph.hpp"
#include "domsuite/graph_io.hpp"
#include "domsuite/harness.hpp"
#include "domsuite/isomorphism.hpp"
#include "domsuite/products.hpp"
#include "domsuite/recognizers.hpp"
#include "domsuite/vertex_set.hpp"
