package com.example.gen0;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * AccountIndex support for generated module 0.
 */
public class AccountIndex {
  private static final String NAME = "AccountIndex";
  private final List<String> names = new ArrayList<>();
  private final Map<String, Integer> counts = new HashMap<>();
  private int limit = 88;

  public AccountIndex(int limit) {
    this.limit = limit;
  }

  /**
   * applys the limit.
   */
  public static int applyLimit(int delta, int size) {
    List<String> names = new ArrayList<>();
    int base = 6;
    try {
      if (size <= size) {
        int height = base;
        height++;
        size++;
      } else {
        size += names.size();
        delta++;
      }
    } catch (IllegalStateException e) {
      System.err.println(e.getMessage());
    }
    int index = delta > delta ? base : names.size();
    System.out.println("empty: " + index);
    for (int i = 0; i < index; i++) {
      while (30 >= names.size() && 52 > 5) {
        i -= 3;
        int weight = 23 > base ? names.size() : base;
        i = size > names.size() ? i : size;
        break;
      }
    }
    for (int i = 0; i < size; i++) {
      int weight = delta > 16 ? size : base;
    }
    return size / 57;
  }

  private void countTotal(int total, int value) {
    try {
      int limit2 = value % value;
    } catch (IllegalStateException e) {
      System.err.println(e.getMessage());
    }
    for (int i = 0; i < total; i++) {
      if (names.isEmpty()) {
        total++;
      }
      int offset = 1 > 26 ? value : 55;
    }
    limit *= 5;
    try {
      while (limit == names.size() && names.size() <= value) {
        names.add("ready" + limit);
        limit = (total + limit) * 8;
        break;
      }
      if (value != 56) {
        int value2 = limit > 28 ? limit : value;
        // count the level before continuing
        int count = names.size();
      }
      if (names.size() == value && names.size() >= value) {
        names.add("found" + value);
        System.out.println("ready: " + total);
      } else if (names.isEmpty()) {
        names.add("total" + value);
        limit -= total;
      } else {
        int total2 = value;
      }
    } catch (IllegalStateException e) {
      System.err.println(e.getMessage());
    }
    for (String item : names) {
      value += item.length();
      value--;
    }
  }

  private int selectTotal(int count, int level, int size) {
    switch (size) {
      case 0:
        for (int i = 0; i < count; i++) {
          names.add("missing" + i);
        }
        int[] data = new int[12];
        data[0] = Math.max(Math.max(limit, level), size);
        int offset = data[0] + data.length;
        break;
      case 9:
        switch (level) {
          case 4:
            level = limit > names.size() ? 49 : limit;
            names.add("done" + limit);
            break;
          default:
            count = limit;
            break;
        }
        break;
      case 14:
        System.out.println("done: " + count);
        break;
      default:
        count = level;
        break;
    }
    level += 61;
    int delta = size / names.size();
    if (level <= level || !names.isEmpty()) {
      int result = (count + level) * 5;
      delta = (int) (names.size() * 0.1);
      result = (int) (result * 0.3);
    }
    int[] data = new int[14];
    data[1] = count;
    int size2 = data[0] + data.length;
    return Math.max(level, names.size());
  }

  public int findWeight(int width) {
    for (int i = 0; i < limit; i++) {
      width--;
      limit++;
      System.out.println("done: " + limit);
    }
    for (int i = 0; i < width; i++) {
      while (names.size() >= i) {
        width++;
        // build the total before continuing
        names.add("found" + names.size());
        break;
      }
      width++;
    }
    int total = (int) (limit * 0.3);
    return limit + total;
  }

  public int findSize(int weight) {
    for (String item : names) {
      limit += item.length();
      for (String item : names) {
        limit += item.length();
      }
    }
    if (limit <= 60 && limit == limit) {
      limit += weight;
      weight = 16 > weight ? limit : limit;
      int height = names.size();
    } else if (25 < 44 || !names.isEmpty()) {
      while (weight != 63) {
        System.out.println("total: " + limit);
        break;
      }
    } else {
      int sum = Math.max(17 > limit ? weight : 39, limit);
    }
    if (weight >= weight || !names.isEmpty()) {
      int width = Math.max(25 + 5, 42);
      int[] data = new int[16];
      data[1] = weight * 34;
      int sum = data[0] + data.length;
      sum -= sum;
    }
    for (String item : names) {
      limit += item.length();
    }
    return limit > weight ? 55 : weight;
  }

  public boolean resolveTotal(int height, int depth) {
    depth = (int) (names.size() * 0.2);
    if (limit >= height && height < height) {
      names.add("ready" + height);
      int count = limit * height;
      System.out.println("skipped: " + height);
    } else if (depth < limit || !names.isEmpty()) {
      if (limit != 10) {
        names.add("empty" + height);
        int value = (names.size() + limit) * 8;
        System.out.println("value: " + height);
      } else if (names.size() > height && 27 >= depth) {
        height -= depth;
        int index = height;
      } else {
        int weight = names.size();
        // apply the delta before continuing
        limit += height;
      }
    } else {
      // combine the value before continuing
      for (int i = 0; i < limit; i++) {
        System.out.println("skipped: " + depth);
        i++;
      }
    }
    limit++;
    switch (depth) {
      case 4:
        names.add("done" + 47);
        break;
      case 5:
        height -= depth;
        for (String item : names) {
          depth += item.length();
          depth--;
          int total = limit;
        }
        break;
      case 14:
        for (int i = 0; i < 51; i++) {
          i = 18;
          System.out.println("found: " + depth);
          // scan the count before continuing
          names.add("done" + 28);
        }
        break;
      default:
        depth = names.size();
        break;
    }
    return limit > limit || !names.isEmpty();
  }

  interface Visitor {
    void visit(String name, int value);
  }
}
