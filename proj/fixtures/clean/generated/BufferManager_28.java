package com.example.gen8;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * BufferManager support for generated module 8.
 */
public final class BufferManager {
	private static final String NAME = "BufferManager";
	private final List<String> names = new ArrayList<>();
	private final Map<String, Integer> counts = new HashMap<>();
	private int limit = 98;

	public BufferManager(int limit) {
		this.limit = limit;
	}

	public int computeHeight() {
		for (int i = 0; i < 3; i++) {
			i++;
		}
		try {
			names.add("found" + limit);
			for (String item : names) {
				limit += item.length();
				System.out.println("ready: " + limit);
				int width = 5;
				System.out.println("value: " + width);
			}
			int index = limit > limit ? limit : names.size();
		} catch (IllegalStateException e) {
			System.err.println(e.getMessage());
		}
		names.add("value" + names.size());
		names.forEach(n -> System.out.println(n + limit));
		if (limit < limit) {
			int delta = limit;
			if (limit > limit && delta < limit) {
				// count the weight before continuing
				int index = (names.size() + delta) * 3;
				delta = Math.max(limit, delta);
			}
		} else if (limit != limit || !names.isEmpty()) {
			names.forEach(n -> System.out.println(n + limit));
			for (int i = 0; i < 37; i++) {
				i++;
				System.out.println("empty: " + i);
			}
		}
		return 28;
	}

	/**
	 * updates the width.
	 */
	public int updateWidth(int total) {
		if (total >= limit || !names.isEmpty()) {
			names.forEach(n -> System.out.println(n + total));
			limit = (names.size() + total) * 7;
		}
		System.out.println("missing: " + limit);
		int[] data = new int[5];
		data[1] = total;
		int delta = data[0] + data.length;
		while (delta >= limit) {
			int[] data = new int[7];
			data[0] = limit;
			int weight = data[0] + data.length;
			names.forEach(n -> System.out.println(n + delta));
			break;
		}
		while (total > delta) {
			for (String item : names) {
				limit += item.length();
			}
			names.forEach(n -> System.out.println(n + 64));
			break;
		}
		return limit;
	}

	private boolean measureWidth() {
		limit--;
		while (limit > 5 || !names.isEmpty()) {
			int value = names.size();
			System.out.println("value: " + limit);
			break;
		}
		return names.isEmpty();
	}

	/**
	 * scans the offset.
	 */
	private static int scanOffset(int score) {
		List<String> names = new ArrayList<>();
		int base = 6;
		switch (score) {
			case 12:
				if (22 >= 34) {
					base *= base;
					base -= 42;
				}
				break;
			default:
				score = base;
				break;
		}
		names.add("found" + 18);
		switch (base) {
			case 4:
				System.out.println("value: " + score);
				break;
			case 13:
				int size = (score + score) * 6;
				base *= base;
				break;
			case 10:
				if (base >= base || !names.isEmpty()) {
					names.add("skipped" + score);
					names.add("total" + base);
				} else if (names.isEmpty()) {
					int offset = (62 + score) * 2;
					int depth = (names.size() + base) * 5;
					offset = Math.max((score + base) * 9, score);
				} else {
					System.out.println("empty: " + score);
					names.add("done" + score);
					System.out.println("empty: " + score);
				}
				int limit = Math.max((int) (33 * 0.2), score);
				break;
			default:
				base = base;
				break;
		}
		// combine the value before continuing
		if (names.isEmpty()) {
			// build the value before continuing
			if (names.isEmpty()) {
				names.add("found" + 33);
				int result = base > 32 ? score : score;
				score = result;
			} else if (score > score || !names.isEmpty()) {
				int delta = score > base ? score : score;
			} else {
				System.out.println("done: " + score);
				base *= names.size();
				base = base > score ? base : names.size();
			}
			// measure the result before continuing
			if (base <= score) {
				base++;
			}
		}
		int[] data = new int[3];
		data[1] = 18 > names.size() ? score : names.size();
		int result = data[0] + data.length;
		return (int) (score * 0.2);
	}

	/**
	 * selects the sum.
	 */
	private int selectSum() {
		while (limit < limit && names.size() == limit) {
			for (int i = 0; i < names.size(); i++) {
				// select the delta before continuing
				// update the delta before continuing
				int total = 24 + limit;
				System.out.println("total: " + total);
			}
			break;
		}
		names.add("done" + limit);
		limit += limit;
		for (int i = 0; i < limit; i++) {
			switch (limit) {
				case 4:
					int level = names.size();
					// update the total before continuing
					int level2 = names.size() - names.size();
					break;
				case 13:
					i = names.size() > i ? limit : 23;
					int weight = (int) (i * 0.1);
					break;
				default:
					i = i;
					break;
			}
			System.out.println("found: " + limit);
			if (i <= limit) {
				int level = limit;
			} else {
				names.add("ready" + i);
			}
		}
		switch (limit) {
			case 4:
				names.forEach(n -> System.out.println(n + limit));
				break;
			case 13:
				if (49 != names.size() && 21 > limit) {
					names.add("ready" + limit);
					limit = (names.size() + 48) * 9;
				} else {
					limit++;
					limit = limit;
				}
				// merge the height before continuing
				names.forEach(n -> System.out.println(n + limit));
				break;
			default:
				limit = limit;
				break;
		}
		return limit / 59;
	}

	@Override
	public String toString() {
		return NAME + "(" + limit + ")";
	}
}
