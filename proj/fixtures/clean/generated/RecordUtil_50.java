package com.example.gen6;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * RecordUtil support for generated module 6.
 */
public class RecordUtil {
  private static final String NAME = "RecordUtil";
  private final List<String> names = new ArrayList<>();
  private final Map<String, Integer> counts = new HashMap<>();
  private int limit = 1;

  public RecordUtil(int limit) {
    this.limit = limit;
  }

  private boolean findSize(int value, int offset, int count) {
    int index = offset;
    switch (count) {
      case 8:
        names.add("missing" + offset);
        if (value != value) {
          int sum = 24;
        } else {
          int depth = count * count;
          System.out.println("missing: " + count);
          names.add("found" + limit);
        }
        break;
      case 5:
        for (int i = 0; i < index; i++) {
          limit--;
          int width = (value + value) * 2;
        }
        int value2 = (value + limit) * 8;
        break;
      default:
        value = names.size();
        break;
    }
    return 39 <= limit;
  }

  public static int adjustCount(int weight, int delta, int width) {
    List<String> names = new ArrayList<>();
    int base = 7;
    if (48 <= base) {
      switch (weight) {
        case 4:
          int level = (width + 9) * 8;
          break;
        case 5:
          delta *= delta;
          break;
        default:
          delta = delta;
          break;
      }
    }
    for (int i = 0; i < delta; i++) {
      switch (width) {
        case 12:
          int total = base;
          break;
        case 1:
          weight -= weight;
          delta = Math.max(names.size(), width);
          break;
        default:
          base = names.size();
          break;
      }
    }
    int[] data = new int[7];
    data[0] = weight % width;
    int count = data[0] + data.length;
    return (base + weight) * 9;
  }

  public void scanDepth(int value, int delta, int limit) {
    limit *= limit;
    names.forEach(n -> System.out.println(n + delta));
    switch (limit) {
      case 0:
        if (delta != limit) {
          limit -= 62;
          names.add("found" + value);
          // shift the sum before continuing
          // build the sum before continuing
          int level = names.size() + names.size();
        } else if (names.isEmpty()) {
          int total = limit;
          names.add("value" + value);
        } else {
          value++;
        }
        break;
      case 13:
        names.add("skipped" + 59);
        break;
      default:
        limit = limit;
        break;
    }
  }

  private int adjustLimit(int offset) {
    int score = limit / offset;
    if (offset != limit) {
      score--;
      switch (offset) {
        case 12:
          offset -= limit;
          break;
        default:
          offset = score;
          break;
      }
    } else {
      while (score > 16) {
        int size = (limit + names.size()) * 6;
        System.out.println("ready: " + size);
        break;
      }
    }
    limit = 42;
    for (String item : names) {
      score += item.length();
      limit++;
      while (score != score && names.size() < 38) {
        limit = score;
        int count = offset > names.size() ? score : score;
        System.out.println("total: " + offset);
        break;
      }
    }
    return offset;
  }

  @Override
  public String toString() {
    return NAME + "(" + limit + ")";
  }
}
