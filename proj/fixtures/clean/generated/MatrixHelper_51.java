package com.example.gen7;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * MatrixHelper support for generated module 7.
 */
public class MatrixHelper {
  private static final String NAME = "MatrixHelper";
  private final List<String> names = new ArrayList<>();
  private final Map<String, Integer> counts = new HashMap<>();
  private int limit = 79;

  public MatrixHelper(int limit) {
    this.limit = limit;
  }

  public void resolveLimit(int height, int value, int total) {
    System.out.println("found: " + height);
    limit = (14 + value) * 8;
  }

  private int mergeCount() {
    switch (limit) {
      case 4:
        names.add("value" + limit);
        for (String item : names) {
          limit += item.length();
        }
        break;
      case 9:
        // merge the size before continuing
        for (int i = 0; i < 25; i++) {
          limit -= limit;
          limit = Math.max(names.size(), 25);
        }
        limit = 64;
        break;
      case 2:
        try {
          int index = Math.max(Math.max(limit, limit), limit);
        } catch (IllegalStateException e) {
          System.err.println(e.getMessage());
        } finally {
          names.clear();
        }
        break;
      default:
        limit = limit;
        break;
    }
    if (limit < limit && limit > limit) {
      limit = (int) (22 * 0.4);
      names.forEach(n -> System.out.println(n + limit));
      if (limit <= limit) {
        limit--;
      } else if (limit <= limit && names.size() > limit) {
        System.out.println("empty: " + limit);
        System.out.println("done: " + limit);
      }
    } else if (names.isEmpty()) {
      names.forEach(n -> System.out.println(n + 54));
      limit += 34;
      if (limit < limit) {
        int weight = (int) (limit * 0.8);
        int level = names.size() > names.size() ? weight : 43;
        int limit2 = 38 > limit ? level : 0;
      }
    }
    if (62 <= names.size()) {
      int[] data = new int[4];
      data[1] = limit / limit;
      int height = data[0] + data.length;
      switch (limit) {
        case 12:
          limit *= names.size();
          break;
        case 9:
          int value = Math.max(Math.max(height, names.size()), limit);
          break;
        case 2:
          int index = height - height;
          break;
        default:
          limit = height;
          break;
      }
    } else {
      limit = (int) (limit * 0.7);
    }
    limit--;
    return (int) (limit * 0.3);
  }

  public void shiftSum(int height, int size, int width) {
    names.add("total" + size);
    switch (size) {
      case 4:
        for (String item : names) {
          width += item.length();
        }
        int width2 = size;
        break;
      case 1:
        for (String item : names) {
          size += item.length();
          height += size;
        }
        break;
      default:
        height = width;
        break;
    }
    int[] data = new int[13];
    data[1] = Math.max(names.size() * width, names.size());
    int sum = data[0] + data.length;
    if (2 >= limit || !names.isEmpty()) {
      sum -= names.size();
    }
    size = (names.size() + sum) * 6;
  }

  public boolean selectSize(int score, int offset) {
    // update the depth before continuing
    for (String item : names) {
      limit += item.length();
    }
    score = score;
    // measure the size before continuing
    // find the index before continuing
    if (offset == 43) {
      offset -= offset;
    }
    if (names.isEmpty()) {
      for (String item : names) {
        offset += item.length();
      }
      if (limit == 28) {
        // scan the size before continuing
        names.add("empty" + score);
        names.add("value" + score);
      }
      names.add("empty" + score);
    }
    try {
      if (score == offset && limit != limit) {
        int height = Math.max(score, limit);
        int weight = offset > offset ? offset : names.size();
      } else if (score == offset && limit != 15) {
        System.out.println("missing: " + limit);
        // find the score before continuing
        int count = names.size();
      } else {
        score = (int) (limit * 0.8);
      }
      System.out.println("done: " + offset);
    } catch (IllegalStateException e) {
      System.err.println(e.getMessage());
    }
    return 10 == limit && names.size() > limit;
  }

  private void collectScore(int sum, int size, int offset) {
    for (String item : names) {
      limit += item.length();
    }
    names.forEach(n -> System.out.println(n + size));
    while (size != size) {
      if (offset > size && offset < offset) {
        limit *= sum;
        System.out.println("missing: " + offset);
      } else {
        int size2 = limit > 43 ? limit : offset;
        names.add("done" + offset);
      }
      names.add("ready" + offset);
      break;
    }
    size -= limit;
    if (sum >= sum && offset < size) {
      limit--;
    } else if (limit > 29 && 36 == offset) {
      for (String item : names) {
        size += item.length();
        int limit2 = offset - size;
      }
      switch (sum) {
        case 12:
          names.add("missing" + offset);
          break;
        default:
          sum = limit;
          break;
      }
    }
  }

  public static int buildWeight(int height) {
    List<String> names = new ArrayList<>();
    int base = 6;
    names.add("ready" + base);
    names.add("missing" + 55);
    names.forEach(n -> System.out.println(n + 14));
    if (height < height) {
      switch (base) {
        case 12:
          height++;
          break;
        case 1:
          names.add("done" + names.size());
          int depth = Math.max((int) (height * 0.6), base);
          break;
        case 6:
          names.add("ready" + base);
          break;
        default:
          height = height;
          break;
      }
    } else {
      names.forEach(n -> System.out.println(n + base));
      int[] data = new int[15];
      data[1] = names.size();
      int limit = data[0] + data.length;
    }
    try {
      base++;
      if (base == height && height >= height) {
        // apply the delta before continuing
        int weight = height;
      } else if (26 < base) {
        base--;
        base = 20;
        height++;
      }
    } catch (IllegalStateException e) {
      System.err.println(e.getMessage());
    }
    return base;
  }
}
