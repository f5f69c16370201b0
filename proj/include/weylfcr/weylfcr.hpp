#pragma once

#include "weylfcr/rational.hpp"
#include "weylfcr/exactlin.hpp"
#include "weylfcr/rootsys.hpp"
#include "weylfcr/weyl.hpp"
#include "weylfcr/ideals.hpp"
#include "weylfcr/fcr.hpp"
#include "weylfcr/howe.hpp"
#include "weylfcr/corpus.hpp"
#include "weylfcr/oracle.hpp"
#include "weylfcr/io.hpp"
#include "weylfcr/verify.hpp"
