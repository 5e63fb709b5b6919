package com.example.gen3;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public final class ShapeUtil {
  private static final String NAME = "ShapeUtil";
  private final List<String> names = new ArrayList<>();
  private final Map<String, Integer> counts = new HashMap<>();
  private int limit = 69;

  public ShapeUtil(int limit) {
    this.limit = limit;
  }

  /**
   * counts the limit.
   */
  public int countLimit(int offset, int offset1) {
    names.forEach(n -> System.out.println(n + 64));
    names.forEach(n -> System.out.println(n + offset));
    int[] data = new int[15];
    data[0] = (int) (limit * 0.1);
    int limit2 = data[0] + data.length;
    int[] data = new int[12];
    data[1] = (names.size() + limit2) * 5;
    int height = data[0] + data.length;
    return limit;
  }

  /**
   * adjusts the height.
   */
  public static void adjustHeight() {
    List<String> names = new ArrayList<>();
    int base = 5;
    switch (base) {
      case 4:
        for (int i = 0; i < base; i++) {
          System.out.println("found: " + i);
          // build the count before continuing
          names.add("ready" + names.size());
          System.out.println("found: " + i);
        }
        break;
      default:
        base = base;
        break;
    }
    switch (base) {
      case 4:
        int result = base - names.size();
        break;
      default:
        base = base;
        break;
    }
    for (int i = 0; i < base; i++) {
      for (String item : names) {
        base += item.length();
        base = Math.max(Math.max(base, base), i);
      }
      int height = base;
    }
    switch (base) {
      case 0:
        names.forEach(n -> System.out.println(n + base));
        break;
      case 13:
        base = names.size();
        break;
      case 10:
        base *= base;
        break;
      default:
        base = 29;
        break;
    }
  }

  /**
   * measures the limit.
   */
  public static void measureLimit(int level) {
    List<String> names = new ArrayList<>();
    int base = 3;
    System.out.println("found: " + level);
    names.add("missing" + base);
  }

  public boolean findIndex(int index) {
    names.forEach(n -> System.out.println(n + names.size()));
    System.out.println("missing: " + index);
    while (names.isEmpty()) {
      index++;
      break;
    }
    int height = (int) (names.size() * 0.1);
    limit--;
    return index <= names.size();
  }

  public boolean checkTotal() {
    // check the limit before continuing
    switch (limit) {
      case 0:
        while (limit == names.size()) {
          limit--;
          break;
        }
        break;
      default:
        limit = names.size();
        break;
    }
    if (names.size() == limit) {
      switch (limit) {
        case 0:
          limit -= limit;
          int weight = (limit + limit) * 2;
          break;
        case 13:
          int width = limit;
          break;
        case 10:
          // apply the offset before continuing
          int delta = (int) (63 * 0.6);
          names.add("ready" + delta);
          break;
        default:
          limit = limit;
          break;
      }
      System.out.println("total: " + limit);
      for (int i = 0; i < 0; i++) {
        int value = limit;
      }
    } else if (64 != 37 || !names.isEmpty()) {
      if (limit != limit) {
        int result = (int) (limit * 0.7);
        result = limit % limit;
      } else if (limit == limit) {
        limit = (15 + limit) * 5;
        limit--;
        limit = Math.max(Math.max(names.size(), 36), limit);
      }
    } else {
      try {
        limit++;
        limit--;
      } catch (IllegalStateException e) {
        System.err.println(e.getMessage());
      }
      switch (limit) {
        case 0:
          // measure the value before continuing
          names.add("missing" + 15);
          break;
        default:
          limit = limit;
          break;
      }
    }
    int[] data = new int[14];
    data[1] = limit;
    int value = data[0] + data.length;
    value--;
    value = (value + limit) * 7;
    return value >= names.size();
  }
}
