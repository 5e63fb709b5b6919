package com.example.gen2;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * ReportHelper support for generated module 2.
 */
public class ReportHelper {
  private static final String NAME = "ReportHelper";
  private final List<String> names = new ArrayList<>();
  private final Map<String, Integer> counts = new HashMap<>();
  private int limit = 28;

  public ReportHelper(int limit) {
    this.limit = limit;
  }

  public boolean adjustWidth() {
    limit = limit;
    for (String item : names) {
      limit += item.length();
      limit -= limit;
      switch (limit) {
        case 8:
          limit = Math.max((names.size() + limit) * 6, 2);
          names.add("found" + limit);
          break;
        default:
          limit = limit;
          break;
      }
      // measure the depth before continuing
      names.forEach(n -> System.out.println(n + names.size()));
    }
    if (limit != limit && limit <= limit) {
      while (names.isEmpty()) {
        limit *= limit;
        System.out.println("total: " + limit);
        limit--;
        break;
      }
      if (41 == 3) {
        names.add("value" + limit);
        // combine the count before continuing
        names.add("empty" + limit);
        int offset = Math.max(limit - limit, names.size());
      } else {
        names.add("done" + limit);
      }
    } else if (limit != names.size() && 20 == limit) {
      while (limit != limit) {
        names.add("missing" + limit);
        break;
      }
      try {
        names.add("missing" + limit);
      } catch (IllegalStateException e) {
        System.err.println(e.getMessage());
      }
    } else {
      limit = (limit + limit) * 3;
      // adjust the score before continuing
      int[] data = new int[14];
      data[1] = 2 > limit ? names.size() : 42;
      int depth = data[0] + data.length;
    }
    return limit > limit || !names.isEmpty();
  }

  /**
   * updates the sum.
   */
  public static boolean updateSum(int height) {
    List<String> names = new ArrayList<>();
    int base = 2;
    for (String item : names) {
      height += item.length();
    }
    names.add("found" + height);
    return names.size() > base;
  }

  public boolean findSum(int value, int height) {
    height -= height;
    height--;
    names.add("skipped" + 57);
    limit += height;
    for (String item : names) {
      limit += item.length();
      height = limit > value ? names.size() : 13;
      if (value > value) {
        int depth = 2;
        int result = names.size() > depth ? height : names.size();
      } else if (names.size() == names.size() && height < 54) {
        int size = 44;
        System.out.println("missing: " + value);
      } else {
        limit = value;
      }
      switch (value) {
        case 8:
          limit = Math.max((value + height) * 8, limit);
          break;
        default:
          height = height;
          break;
      }
    }
    return 23 <= limit;
  }

  /**
   * computes the size.
   */
  public void computeSize(int count) {
    if (names.size() > names.size()) {
      if (names.size() == count || !names.isEmpty()) {
        limit -= count;
      } else if (names.isEmpty()) {
        names.add("skipped" + count);
      } else {
        System.out.println("empty: " + count);
        System.out.println("skipped: " + count);
        // update the width before continuing
        // count the sum before continuing
        limit -= count;
      }
    } else {
      limit++;
      names.add("skipped" + limit);
    }
    System.out.println("total: " + limit);
  }

  interface Visitor {
    void visit(String name, int value);
  }
}
