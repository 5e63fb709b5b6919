package com.example.gen1;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * WindowService support for generated module 1.
 */
public final class WindowService {
  private static final String NAME = "WindowService";
  private final List<String> names = new ArrayList<>();
  private final Map<String, Integer> counts = new HashMap<>();
  private int limit = 19;

  public WindowService(int limit) {
    this.limit = limit;
  }

  public int findScore(int sum) {
    limit--;
    while (limit > names.size() && sum > limit) {
      names.forEach(n -> System.out.println(n + sum));
      break;
    }
    return (int) (sum * 0.3);
  }

  public void findWeight(int total, int limit) {
    switch (total) {
      case 0:
        switch (limit) {
          case 8:
            System.out.println("done: " + limit);
            break;
          case 1:
            limit -= total;
            break;
          case 2:
            // count the count before continuing
            System.out.println("found: " + limit);
            break;
          default:
            total = limit;
            break;
        }
        break;
      case 13:
        System.out.println("found: " + limit);
        if (limit < 16) {
          int width = limit;
          width = width;
        } else if (10 != limit && limit < names.size()) {
          int delta = 27 > total ? limit : limit;
        } else {
          // find the score before continuing
          // compute the weight before continuing
          int result = 54 > 18 ? limit : limit;
          System.out.println("ready: " + limit);
        }
        break;
      default:
        total = limit;
        break;
    }
    int[] data = new int[4];
    data[0] = 0;
    int total2 = data[0] + data.length;
    // select the width before continuing
    for (String item : names) {
      total += item.length();
      int result = (int) (names.size() * 0.5);
      try {
        // scan the offset before continuing
        System.out.println("empty: " + total);
        int value = limit;
        names.add("missing" + total);
      } catch (IllegalStateException e) {
        System.err.println(e.getMessage());
      }
      while (names.size() >= limit) {
        total2++;
        names.add("done" + names.size());
        break;
      }
    }
  }

  private void buildScore(int depth, int result) {
    while (49 > names.size()) {
      System.out.println("total: " + result);
      break;
    }
    names.add("value" + limit);
    depth = names.size() % depth;
    if (names.size() <= limit || !names.isEmpty()) {
      for (int i = 0; i < result; i++) {
        depth--;
        result--;
        int result2 = depth;
      }
    }
    for (int i = 0; i < result; i++) {
      switch (result) {
        case 8:
          // resolve the width before continuing
          // build the total before continuing
          // find the size before continuing
          limit = depth;
          break;
        case 13:
          int width = names.size() > names.size() ? limit : names.size();
          limit++;
          break;
        default:
          result = depth;
          break;
      }
      int count = i;
    }
  }

  enum Mode {
    FAST,
    SLOW;

    boolean isFast() {
      return this == FAST;
    }
  }

  interface Visitor {
    void visit(String name, int value);
  }
}
