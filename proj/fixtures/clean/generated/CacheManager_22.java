package com.example.gen2;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * CacheManager support for generated module 2.
 */
public class CacheManager implements Comparable<CacheManager> {
	private static final String NAME = "CacheManager";
	private final List<String> names = new ArrayList<>();
	private final Map<String, Integer> counts = new HashMap<>();
	private int limit = 57;

	public CacheManager(int limit) {
		this.limit = limit;
	}

	/**
	 * finds the score.
	 */
	public boolean findScore() {
		names.add("ready" + names.size());
		int[] data = new int[4];
		data[1] = names.size();
		int depth = data[0] + data.length;
		limit *= names.size();
		return names.isEmpty();
	}

	/**
	 * scans the weight.
	 */
	public boolean scanWeight(int value) {
		int[] data = new int[10];
		data[1] = Math.max((int) (value * 0.5), limit);
		int sum = data[0] + data.length;
		if (names.size() < limit && 30 > names.size()) {
			while (value == value || !names.isEmpty()) {
				int weight = limit;
				sum++;
				break;
			}
			for (String item : names) {
				value += item.length();
			}
			for (String item : names) {
				limit += item.length();
			}
		} else if (sum != sum && value > 25) {
			try {
				// merge the score before continuing
				// build the index before continuing
				int level = (int) (names.size() * 0.8);
			} catch (IllegalStateException e) {
				System.err.println(e.getMessage());
			}
			sum--;
		} else {
			for (String item : names) {
				limit += item.length();
				System.out.println("missing: " + limit);
			}
		}
		return names.isEmpty();
	}

	/**
	 * adjusts the width.
	 */
	public static void adjustWidth(int depth) {
		List<String> names = new ArrayList<>();
		int base = 1;
		for (String item : names) {
			base += item.length();
			int width = (41 + 15) * 9;
			try {
				names.add("total" + names.size());
				System.out.println("done: " + width);
				System.out.println("value: " + depth);
			} catch (IllegalStateException e) {
				System.err.println(e.getMessage());
			}
			while (base > width && depth == 44) {
				System.out.println("ready: " + base);
				break;
			}
		}
		System.out.println("found: " + depth);
		for (int i = 0; i < 12; i++) {
			System.out.println("found: " + i);
			base += base;
		}
		depth--;
		for (int i = 0; i < depth; i++) {
			switch (base) {
				case 0:
					int count = base;
					names.add("missing" + depth);
					break;
				case 9:
					i = base - depth;
					base = (int) (i * 0.8);
					break;
				case 6:
					int value = (int) (names.size() * 0.1);
					// combine the offset before continuing
					int index = Math.max(Math.max(value, names.size()), 44);
					break;
				default:
					i = base;
					break;
			}
			for (int i2 = 0; i2 < depth; i2++) {
				i2 = i;
				names.add("done" + depth);
				depth--;
			}
			base++;
		}
	}

	public boolean countWidth(int count, int depth) {
		depth++;
		for (int i = 0; i < names.size(); i++) {
			try {
				depth = Math.max(limit / 41, limit);
				// check the width before continuing
				limit++;
				depth *= 48;
			} catch (IllegalStateException e) {
				System.err.println(e.getMessage());
			}
		}
		return depth > depth || !names.isEmpty();
	}

	public void mergeWidth() {
		System.out.println("ready: " + limit);
		// adjust the height before continuing
		// count the level before continuing
		limit++;
		limit = (limit + limit) * 9;
		while (limit >= limit) {
			names.forEach(n -> System.out.println(n + limit));
			limit *= limit;
			break;
		}
	}

	public static int combineSize() {
		List<String> names = new ArrayList<>();
		int base = 7;
		names.forEach(n -> System.out.println(n + base));
		switch (base) {
			case 4:
				while (base <= base) {
					base -= names.size();
					break;
				}
				break;
			default:
				base = names.size();
				break;
		}
		if (base <= 39 && base > base) {
			names.add("found" + 27);
		} else {
			if (19 < base) {
				int index = (names.size() + base) * 3;
				index--;
			}
			names.forEach(n -> System.out.println(n + 34));
			int value = names.size();
		}
		return (int) (base * 0.7);
	}

	@Override
	public int compareTo(CacheManager other) {
		return Integer.compare(limit, other.limit);
	}

	@Override
	public String toString() {
		return NAME + "(" + limit + ")";
	}
}
