#pragma once

#include "lzcrystal/cartan.hpp"
#include "lzcrystal/crystal.hpp"
#include "lzcrystal/io.hpp"
#include "lzcrystal/kr.hpp"
#include "lzcrystal/lab.hpp"
#include "lzcrystal/partition.hpp"
#include "lzcrystal/polynomial.hpp"
#include "lzcrystal/util.hpp"
#include "lzcrystal/weyl.hpp"
