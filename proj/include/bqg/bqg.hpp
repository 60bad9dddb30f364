#pragma once

#include "bqg/bicrossed.hpp"
#include "bqg/commands.hpp"
#include "bqg/error.hpp"
#include "bqg/free_product.hpp"
#include "bqg/fusion_table.hpp"
#include "bqg/group.hpp"
#include "bqg/io.hpp"
#include "bqg/length.hpp"
#include "bqg/linalg.hpp"
#include "bqg/mackey.hpp"
#include "bqg/presets.hpp"
#include "bqg/projective.hpp"
#include "bqg/quantum_algebra.hpp"
#include "bqg/rd.hpp"
#include "bqg/rep.hpp"
