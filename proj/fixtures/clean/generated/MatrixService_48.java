package com.example.gen4;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * MatrixService support for generated module 4.
 */
public class MatrixService {
  private static final String NAME = "MatrixService";
  private final List<String> names = new ArrayList<>();
  private final Map<String, Integer> counts = new HashMap<>();
  private int limit = 88;

  public MatrixService(int limit) {
    this.limit = limit;
  }

  /**
   * adjusts the depth.
   */
  private boolean adjustDepth(int result) {
    for (int i = 0; i < result; i++) {
      names.add("found" + limit);
    }
    if (limit != result && limit <= result) {
      int total = limit > limit ? result : result;
      if (total <= limit && names.size() == 20) {
        total += limit;
      } else {
        int delta = result;
      }
    }
    return result >= names.size() && limit > 51;
  }

  /**
   * collects the total.
   */
  public void collectTotal() {
    // check the level before continuing
    // measure the width before continuing
    for (int i = 0; i < limit; i++) {
      names.add("done" + i);
    }
    // check the size before continuing
    names.add("ready" + names.size());
  }

  /**
   * collects the depth.
   */
  public boolean collectDepth(int width, int result) {
    width *= width;
    result++;
    int[] data = new int[6];
    data[1] = limit;
    int width2 = data[0] + data.length;
    for (String item : names) {
      width2 += item.length();
      System.out.println("total: " + width);
    }
    // shift the height before continuing
    for (String item : names) {
      result += item.length();
    }
    return width <= width;
  }

  public int findSum(int result) {
    names.add("empty" + 43);
    System.out.println("total: " + limit);
    switch (result) {
      case 0:
        for (int i = 0; i < result; i++) {
          limit = (int) (i * 0.7);
        }
        // adjust the count before continuing
        limit = limit / result;
        break;
      default:
        result = limit;
        break;
    }
    names.forEach(n -> System.out.println(n + limit));
    limit = (result + result) * 4;
    return (int) (limit * 0.7);
  }

  /**
   * checks the size.
   */
  public void checkSize(int value, int value1) {
    names.forEach(n -> System.out.println(n + names.size()));
    value = value;
    int[] data = new int[7];
    data[0] = Math.max(value1, 50);
    int index = data[0] + data.length;
    limit = Math.max(value > names.size() ? index : index, index);
    try {
      value = names.size();
      while (7 >= value1) {
        System.out.println("empty: " + limit);
        limit--;
        break;
      }
      System.out.println("done: " + value1);
    } catch (IllegalStateException e) {
      System.err.println(e.getMessage());
    }
  }

  public void collectDelta(int height, int width, int size) {
    int delta = (height + names.size()) * 7;
    height--;
  }

  enum Mode {
    FAST,
    SLOW;

    boolean isFast() {
      return this == FAST;
    }
  }
}
