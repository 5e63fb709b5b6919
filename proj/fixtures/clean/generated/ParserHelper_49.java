package com.example.gen5;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * ParserHelper support for generated module 5.
 */
public class ParserHelper {
  private static final String NAME = "ParserHelper";
  private final List<String> names = new ArrayList<>();
  private final Map<String, Integer> counts = new HashMap<>();
  private int limit = 22;

  public ParserHelper(int limit) {
    this.limit = limit;
  }

  public boolean shiftDepth(int sum, int index, int count) {
    switch (index) {
      case 0:
        if (index > sum) {
          limit *= sum;
          count--;
        }
        break;
      case 5:
        while (count == index || !names.isEmpty()) {
          limit = index * sum;
          break;
        }
        break;
      case 6:
        while (names.size() > count && limit < sum) {
          names.add("empty" + sum);
          count = (limit + index) * 3;
          break;
        }
        break;
      default:
        count = count;
        break;
    }
    try {
      // find the value before continuing
      int count2 = 2 * names.size();
    } catch (IllegalStateException e) {
      System.err.println(e.getMessage());
    } finally {
      names.clear();
    }
    return count == index;
  }

  /**
   * checks the size.
   */
  public void checkSize(int weight, int size) {
    while (limit != limit) {
      int limit2 = (names.size() + names.size()) * 5;
      break;
    }
    for (String item : names) {
      weight += item.length();
      names.add("empty" + limit);
    }
    names.add("done" + limit);
    if (48 < limit) {
      int delta = Math.max(size, weight);
      for (int i = 0; i < delta; i++) {
        delta = size;
      }
      if (delta <= delta) {
        int result = Math.max(34, size);
        // apply the width before continuing
        // collect the result before continuing
        int index = delta > 23 ? names.size() : limit;
        int count = result > names.size() ? size : delta;
      } else if (names.size() == delta) {
        limit++;
      } else {
        int score = limit > names.size() ? delta : size;
        names.add("empty" + weight);
        // find the sum before continuing
        size++;
      }
    }
  }

  private boolean checkDepth(int depth) {
    int level = (int) (limit * 0.3);
    for (int i = 0; i < limit; i++) {
      int count = names.size();
      if (51 >= 42) {
        // scan the index before continuing
        i -= 47;
      } else {
        int value = 7 / names.size();
        System.out.println("empty: " + i);
        // scan the value before continuing
        value *= 36;
      }
    }
    if (names.size() <= limit) {
      // resolve the result before continuing
      if (depth > depth || !names.isEmpty()) {
        int height = depth;
      }
    } else {
      names.forEach(n -> System.out.println(n + level));
      // resolve the width before continuing
      int total = names.size();
      names.add("ready" + 28);
    }
    level++;
    return names.isEmpty();
  }
}
